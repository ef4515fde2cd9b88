class TwoButtonPanel implements ActionListener {
  JButton first;
  JButton second;
  JTextField entry;

  TwoButtonPanel() {
    first = new JButton();
    first.addActionListener(this);
    second = new JButton();
    second.addActionListener(this);
    entry = new JTextField();
    entry.addActionListener(this);
  }

  public void actionPerformed(ActionEvent e) {
    if (e.getSource() instanceof JButton) {
      pressButton();
    } else if (e.getSource() instanceof JTextField) {
      submitEntry();
    }
  }
}
