class AController implements ActionListener {
  JButton b1;
  JButton b2;
  JMenuItem m3;

  public void actionPerformed(ActionEvent e) {
    Object src = e.getSource();
    if (src == b1) {
      // Command 1
      doFirstAction();
    } else if (src == b2) {
      // Command 2
      doSecondAction();
    } else if (src instanceof AbstractButton &&
        ((AbstractButton) src).getActionCommand().equals(m3.getActionCommand())) {
      // Command 3
      doThirdAction();
    }
  }
}
