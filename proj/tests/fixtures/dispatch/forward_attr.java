public class ForwardController implements ActionListener {
  JButton one;
  JButton two;

  public void actionPerformed(ActionEvent e) {
    handleSource(e.getSource());
  }

  private void handleSource(Object src) {
    if (src == one) {
      doOne();
    } else if (src == two) {
      doTwo();
    }
  }

  private void doOne() {
    refresh();
  }

  private void doTwo() {
    refresh();
  }
}
